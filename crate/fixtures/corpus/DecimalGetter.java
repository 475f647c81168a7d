import java.math.BigDecimal;
import java.sql.*;

class DecimalGetter {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT price FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            BigDecimal price = rs.getBigDecimal("price");
        }
    }
}
