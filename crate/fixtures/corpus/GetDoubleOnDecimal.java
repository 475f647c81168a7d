import java.sql.*;

class GetDoubleOnDecimal {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name, price FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String name = rs.getString(1);
            double price = rs.getDouble(2);
        }
    }
}
