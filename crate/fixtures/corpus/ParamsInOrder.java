import java.sql.*;

class ParamsInOrder {
    void run(Connection c, int id, String name) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT price FROM product WHERE id = ? AND name = ?");
        ps.setInt(1, id);
        ps.setString(2, name);
        ps.executeQuery();
    }
}
