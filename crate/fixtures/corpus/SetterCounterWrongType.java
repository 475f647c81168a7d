import java.sql.*;

class SetterCounterWrongType {
    void run(Connection c, int product, String qty) throws SQLException {
        PreparedStatement ps = c.prepareStatement("UPDATE orders SET product_id = ? WHERE qty = ?");
        int ctr = 1;
        ps.setInt(ctr++, product);
        ps.setString(ctr++, qty);
    }
}
