import java.sql.*;

class GetFloatOnDouble {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT score FROM customer");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            double s = rs.getFloat("score");
        }
    }
}
