import java.sql.*;

class DateGetter {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT added FROM product");
        ResultSet rs = ps.executeQuery();
        if (rs.next()) {
            Date day = rs.getDate("added");
        }
    }
}
