import java.sql.*;

class ColumnIndexTooHigh {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id, name FROM product");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            String s = rs.getString(3);
        }
    }
}
