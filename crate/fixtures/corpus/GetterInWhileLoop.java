import java.sql.*;

class GetterInWhileLoop {
    double run(Connection c) throws SQLException {
        double total = 0;
        PreparedStatement ps = c.prepareStatement("SELECT qty FROM orders");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            total += rs.getDouble("qty");
        }
        return total;
    }
}
