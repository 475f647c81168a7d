import java.sql.*;

class CompoundQuery {
    void run(Connection c) throws SQLException {
        String q = "SELECT id";
        q += ", note FROM orders";
        ResultSet rs = c.prepareStatement(q).executeQuery();
        while (rs.next()) {
            String note = rs.getString("note");
        }
    }
}
