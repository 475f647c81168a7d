import java.sql.*;

class GetIntOnVarchar {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            int n = rs.getInt("name");
        }
    }
}
