import java.sql.*;

class ParamIndexReassign {
    void run(Connection c, int qty) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT note FROM orders WHERE qty = ?");
        int slot = 1;
        slot = 3;
        ps.setInt(slot, qty);
    }
}
