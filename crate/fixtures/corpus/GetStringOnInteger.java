import java.sql.*;

class GetStringOnInteger {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT qty FROM orders");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String q = rs.getString("qty");
        }
    }
}
