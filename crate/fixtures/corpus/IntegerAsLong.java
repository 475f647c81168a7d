import java.sql.*;

class IntegerAsLong {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT qty FROM orders");
        ResultSet rs = ps.executeQuery();
        long sum = 0;
        while (rs.next()) {
            sum += rs.getLong("qty");
        }
    }
}
