import java.sql.*;

class GetterStarByName {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT * FROM customer");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String mail = rs.getString("email");
            String when = rs.getString("joined");
        }
    }
}
