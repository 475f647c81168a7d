import java.sql.*;

class CharColumnFilter {
    void run(Connection c, String city) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT email, score FROM customer WHERE city = ?");
        ps.setString(1, city);
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            double score = rs.getDouble("score");
        }
    }
}
