import java.sql.*;

class ColumnNameAliased {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name AS label FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String n = rs.getString("name");
        }
    }
}
