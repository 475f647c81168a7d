import java.sql.*;

class ConcatIntConstant {
    void run(Connection c, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT note FROM orders WHERE qty > " + 5 + " AND id = ?");
        ps.setInt(1, id);
        ps.executeQuery();
    }
}
