import java.sql.*;

class StarByIndex {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT * FROM customer");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            long id = rs.getLong(1);
            String email = rs.getString(2);
            String city = rs.getString(3);
            double score = rs.getDouble(4);
            Timestamp joined = rs.getTimestamp(5);
        }
    }
}
