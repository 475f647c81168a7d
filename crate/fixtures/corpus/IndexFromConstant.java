import java.sql.*;

class IndexFromConstant {
    void run(Connection c) throws SQLException {
        int col = 2;
        PreparedStatement ps = c.prepareStatement("SELECT id, name FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String name = rs.getString(col);
        }
    }
}
