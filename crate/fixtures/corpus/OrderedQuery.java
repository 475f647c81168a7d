import java.sql.*;

class OrderedQuery {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name, stock FROM product ORDER BY name");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String name = rs.getString(1);
            short stock = rs.getShort(2);
        }
    }
}
