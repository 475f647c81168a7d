import java.sql.*;

class SetDate {
    void run(Connection c, Date day) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id FROM product WHERE added = ?");
        ps.setDate(1, day);
        ps.executeQuery();
    }
}
