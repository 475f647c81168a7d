import java.sql.*;

class SetIntOnBigint {
    void run(Connection c, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT email FROM customer WHERE id = ?");
        ps.setInt(1, id);
    }
}
