import java.sql.*;

class SetterIfElseJoin {
    void run(Connection c, boolean orders, String key) throws SQLException {
        String q;
        if (orders) {
            q = "SELECT note FROM orders WHERE id = ?";
        } else {
            q = "SELECT name FROM product WHERE id = ?";
        }
        PreparedStatement ps = c.prepareStatement(q);
        ps.setString(1, key);
    }
}
