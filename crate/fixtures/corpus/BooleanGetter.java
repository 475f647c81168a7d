import java.sql.*;

class BooleanGetter {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT active FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            boolean on = rs.getBoolean("active");
        }
    }
}
