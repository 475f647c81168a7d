import java.sql.*;

class ColumnNameMissing {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id, name FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String t = rs.getString("title");
        }
    }
}
