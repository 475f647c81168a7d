import java.sql.*;

class SmallintGetter {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT stock FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            short left = rs.getShort("stock");
        }
    }
}
