import java.sql.*;

class CounterIndex {
    void update(Connection conn, int quantity, String id) throws SQLException {
        PreparedStatement ps = conn.prepareStatement(
            "UPDATE stock SET s_quantity = ? WHERE s_dist_01 = ?");
        int ctr = 1;
        ps.setInt(ctr++, quantity);
        ps.setString(ctr++, id);
    }
}
