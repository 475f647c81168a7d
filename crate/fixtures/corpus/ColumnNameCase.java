import java.sql.*;

class ColumnNameCase {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String n = rs.getString("NAME");
        }
    }
}
