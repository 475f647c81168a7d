import java.sql.*;

class DeleteById {
    void run(Connection c, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("DELETE FROM product WHERE id = ?");
        ps.setInt(1, id);
        ps.executeUpdate();
    }
}
