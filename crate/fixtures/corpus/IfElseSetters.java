import java.sql.*;

class IfElseSetters {
    void run(Connection c, boolean all, int qty) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id FROM orders WHERE qty >= ?");
        if (all) {
            ps.setInt(1, 0);
        } else {
            ps.setInt(1, qty);
        }
        ps.executeQuery();
    }
}
