import java.sql.*;

class UpdateCounter {
    void run(Connection c, int qty, String note, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("UPDATE orders SET qty = ?, note = ? WHERE id = ?");
        int ctr = 1;
        ps.setInt(ctr++, qty);
        ps.setString(ctr++, note);
        ps.setInt(ctr++, id);
        ps.executeUpdate();
    }
}
