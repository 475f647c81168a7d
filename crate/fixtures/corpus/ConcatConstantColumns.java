import java.sql.*;

class ConcatConstantColumns {
    void run(Connection c) throws SQLException {
        String cols = "id, email";
        String q = "SELECT " + cols + " FROM customer";
        ResultSet rs = c.prepareStatement(q).executeQuery();
        while (rs.next()) {
            long id = rs.getLong("id");
            String email = rs.getString("email");
        }
    }
}
