import java.sql.*;

class SetterConcatIntConstant {
    void run(Connection c, String id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT note FROM orders WHERE qty > " + 5 + " AND id = ?");
        ps.setString(1, id);
    }
}
