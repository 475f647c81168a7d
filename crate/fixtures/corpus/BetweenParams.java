import java.sql.*;

class BetweenParams {
    void run(Connection c, int lo, int hi) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT note FROM orders WHERE qty BETWEEN ? AND ?");
        ps.setInt(1, lo);
        ps.setInt(2, hi);
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String note = rs.getString("note");
        }
    }
}
