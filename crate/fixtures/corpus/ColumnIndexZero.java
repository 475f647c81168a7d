import java.sql.*;

class ColumnIndexZero {
    void run(Connection c) throws SQLException {
        ResultSet rs = c.prepareStatement("SELECT qty FROM orders").executeQuery();
        if (rs.next()) {
            int q = rs.getInt(0);
        }
    }
}
