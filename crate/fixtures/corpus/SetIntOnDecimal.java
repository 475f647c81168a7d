import java.sql.*;

class SetIntOnDecimal {
    void run(Connection c, int price, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("UPDATE product SET price = ? WHERE id = ?");
        ps.setInt(1, price);
        ps.setInt(2, id);
        ps.executeUpdate();
    }
}
