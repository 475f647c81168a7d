import java.sql.*;

class ParamIndexZero {
    void run(Connection c, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("DELETE FROM orders WHERE id = ?");
        ps.setInt(0, id);
        ps.executeUpdate();
    }
}
