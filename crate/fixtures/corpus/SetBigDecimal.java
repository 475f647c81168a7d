import java.math.BigDecimal;
import java.sql.*;

class SetBigDecimal {
    void run(Connection c, BigDecimal price, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("UPDATE product SET price = ? WHERE id = ?");
        ps.setBigDecimal(1, price);
        ps.setInt(2, id);
        ps.executeUpdate();
    }
}
