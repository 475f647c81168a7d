import java.sql.*;

class ColumnIndexCounter {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id, note FROM orders");
        ResultSet rs = ps.executeQuery();
        if (rs.next()) {
            int col = 1;
            int id = rs.getInt(col++);
            String note = rs.getString(col++);
            String more = rs.getString(col++);
        }
    }
}
