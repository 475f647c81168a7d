import java.sql.*;

class ColumnStarIndex {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT * FROM orders");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String extra = rs.getString(6);
        }
    }
}
