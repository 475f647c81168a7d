import java.sql.*;

class ParamIfBranch {
    void run(Connection c, boolean byName, String name, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id FROM product WHERE name = ?");
        if (byName) {
            ps.setString(1, name);
        } else {
            ps.setInt(2, id);
        }
    }
}
