import java.sql.*;

class ConcatQuery {
    void run(Connection c, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id, name" + " FROM product WHERE id = ?");
        ps.setInt(1, id);
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String name = rs.getString("name");
        }
    }
}
