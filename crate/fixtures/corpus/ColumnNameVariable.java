import java.sql.*;

class ColumnNameVariable {
    void run(Connection c) throws SQLException {
        String col = "nme";
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product");
        ResultSet rs = ps.executeQuery();
        if (rs.next()) {
            String n = rs.getString(col);
        }
    }
}
