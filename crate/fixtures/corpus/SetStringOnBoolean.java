import java.sql.*;

class SetStringOnBoolean {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product WHERE active = ?");
        ps.setString(1, "true");
    }
}
