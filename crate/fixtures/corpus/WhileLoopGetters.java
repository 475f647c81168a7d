import java.sql.*;

class WhileLoopGetters {
    int run(Connection c) throws SQLException {
        int total = 0;
        PreparedStatement ps = c.prepareStatement("SELECT product_id, qty FROM orders");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            int product = rs.getInt(1);
            total += rs.getInt(2);
        }
        return total;
    }
}
