import java.sql.*;

class ReassignStatement {
    void run(Connection c, int id, String email) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product WHERE id = ?");
        ps.setInt(1, id);
        ps.executeQuery();
        ps = c.prepareStatement("SELECT id FROM customer WHERE email = ?");
        ps.setString(1, email);
        ps.executeQuery();
    }
}
