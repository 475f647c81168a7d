import java.sql.*;

class SetterReassignedStatement {
    void run(Connection c, int id, long key) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product WHERE id = ?");
        ps.setInt(1, id);
        ps = c.prepareStatement("SELECT id FROM customer WHERE email = ?");
        ps.setLong(1, key);
    }
}
