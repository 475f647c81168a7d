import java.sql.*;

class SetShort {
    void run(Connection c, short stock) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product WHERE stock < ?");
        ps.setShort(1, stock);
        ps.executeQuery();
    }
}
