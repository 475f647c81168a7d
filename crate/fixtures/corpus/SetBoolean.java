import java.sql.*;

class SetBoolean {
    void run(Connection c, boolean on) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id FROM product WHERE active = ?");
        ps.setBoolean(1, on);
        ps.executeQuery();
    }
}
