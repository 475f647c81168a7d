import java.sql.*;

class GetIntOnSmallint {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT stock FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            int left = rs.getInt("stock");
        }
    }
}
