import java.sql.*;

class QualifiedColumn {
    void run(Connection c, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT p.name FROM product p WHERE p.id = ?");
        ps.setInt(1, id);
        ResultSet rs = ps.executeQuery();
        if (rs.next()) {
            String n = rs.getString("name");
        }
    }
}
