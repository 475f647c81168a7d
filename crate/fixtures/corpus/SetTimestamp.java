import java.sql.*;

class SetTimestamp {
    void run(Connection c, Timestamp since) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT email FROM customer WHERE joined > ?");
        ps.setTimestamp(1, since);
        ps.executeQuery();
    }
}
