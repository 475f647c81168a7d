import java.sql.*;

class ParamIndexTooHigh {
    void run(Connection c, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product WHERE id = ?");
        ps.setInt(2, id);
    }
}
