import java.sql.*;

class GetByAlias {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name AS label FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String label = rs.getString("label");
        }
    }
}
