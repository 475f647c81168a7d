import java.sql.*;

class SetterWhileLoop {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT note FROM orders WHERE qty = ?");
        int n = 0;
        while (n < 3) {
            ps.setString(1, "7");
            ps.executeQuery();
            n++;
        }
    }
}
