import java.sql.*;

class IfElseSameShape {
    void run(Connection c, boolean orders, int key) throws SQLException {
        String q;
        if (orders) {
            q = "SELECT id, qty FROM orders WHERE id = ?";
        } else {
            q = "SELECT id, stock FROM product WHERE id = ?";
        }
        PreparedStatement ps = c.prepareStatement(q);
        ps.setInt(1, key);
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            int id = rs.getInt(1);
        }
    }
}
