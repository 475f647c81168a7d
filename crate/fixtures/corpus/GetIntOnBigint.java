import java.sql.*;

class GetIntOnBigint {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id FROM customer");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            int id = rs.getInt(1);
        }
    }
}
