import java.sql.*;

class GetIntOnDecimal {
    void run(Connection c, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT price FROM product WHERE id = ?");
        ps.setInt(1, id);
        ResultSet rs = ps.executeQuery();
        if (rs.next()) {
            int cents = rs.getInt("price");
        }
    }
}
