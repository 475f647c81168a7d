import java.sql.*;

class ColumnNameConcat {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id, " + "email FROM customer");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String city = rs.getString("city");
        }
    }
}
