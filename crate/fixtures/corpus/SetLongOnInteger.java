import java.sql.*;

class SetLongOnInteger {
    void run(Connection c, long qty) throws SQLException {
        PreparedStatement ps = c.prepareStatement("DELETE FROM orders WHERE qty = ?");
        ps.setLong(1, qty);
        ps.executeUpdate();
    }
}
