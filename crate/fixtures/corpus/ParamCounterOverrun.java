import java.sql.*;

class ParamCounterOverrun {
    void run(Connection c, String email, String city, long id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("UPDATE customer SET email = ? WHERE city = ?");
        int ctr = 1;
        ps.setString(ctr++, email);
        ps.setString(ctr++, city);
        ps.setLong(ctr++, id);
    }
}
