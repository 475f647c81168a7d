import java.sql.*;

class SetLongKey {
    void run(Connection c, long id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT email FROM customer WHERE id = ?");
        ps.setLong(1, id);
        ResultSet rs = ps.executeQuery();
        if (rs.next()) {
            String email = rs.getString(1);
        }
    }
}
