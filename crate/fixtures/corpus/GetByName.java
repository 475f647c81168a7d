import java.sql.*;

class GetByName {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id, note FROM orders");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            int id = rs.getInt("id");
            String note = rs.getString("note");
        }
    }
}
