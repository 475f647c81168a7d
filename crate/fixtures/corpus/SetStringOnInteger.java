import java.sql.*;

class SetStringOnInteger {
    void run(Connection c, String id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product WHERE id = ?");
        ps.setString(1, id);
    }
}
