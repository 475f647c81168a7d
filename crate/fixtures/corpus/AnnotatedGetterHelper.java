import java.sql.*;

class AnnotatedGetterHelper {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id, email FROM customer");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            show(rs);
        }
    }

    void show(@Sql(out = {"BIGINT id", "VARCHAR email"}) ResultSet rs) throws SQLException {
        long id = rs.getLong("id");
        String email = rs.getString(2);
    }
}
