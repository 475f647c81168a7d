import java.sql.*;

class SetIntOnSmallint {
    void run(Connection c, int stock, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("UPDATE product SET stock = ? WHERE id = ?");
        ps.setInt(1, stock);
        ps.setInt(2, id);
    }
}
