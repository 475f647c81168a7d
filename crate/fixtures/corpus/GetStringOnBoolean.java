import java.sql.*;

class GetStringOnBoolean {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT active FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String flag = rs.getString("active");
        }
    }
}
