import java.sql.*;

class CounterInsert {
    void run(Connection c, long id, String email, String city) throws SQLException {
        PreparedStatement ps = c.prepareStatement("INSERT INTO customer (id, email, city) VALUES (?, ?, ?)");
        int i = 1;
        ps.setLong(i++, id);
        ps.setString(i++, email);
        ps.setString(i++, city);
        ps.executeUpdate();
    }
}
