import java.sql.*;

class GetStringOnDate {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT added FROM product");
        ResultSet rs = ps.executeQuery();
        if (rs.next()) {
            String day = rs.getString("added");
        }
    }
}
