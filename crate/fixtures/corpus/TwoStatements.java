import java.sql.*;

class TwoStatements {
    void run(Connection c, int id, int qty) throws SQLException {
        PreparedStatement find = c.prepareStatement("SELECT stock FROM product WHERE id = ?");
        find.setInt(1, id);
        ResultSet rs = find.executeQuery();
        PreparedStatement add = c.prepareStatement("INSERT INTO orders (product_id, qty) VALUES (?, ?)");
        if (rs.next()) {
            add.setInt(1, id);
            add.setInt(2, qty);
            add.executeUpdate();
        }
    }
}
