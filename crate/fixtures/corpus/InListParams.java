import java.sql.*;

class InListParams {
    void run(Connection c, int a, int b, int d) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product WHERE id IN (?, ?, ?)");
        ps.setInt(1, a);
        ps.setInt(2, b);
        ps.setInt(3, d);
        ps.executeQuery();
    }
}
