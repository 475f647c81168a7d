import java.sql.*;

class HelperWrongGetter {
    void run(Connection c) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id, email FROM customer");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            show(rs);
        }
    }

    void show(@Sql(out = {"BIGINT id", "VARCHAR email"}) ResultSet rs) throws SQLException {
        int id = rs.getInt("id");
    }
}
