import java.sql.*;

class AnnotatedSetterHelper {
    void run(Connection c, int id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT name FROM product WHERE id = ?");
        bind(ps, id);
        ps.executeQuery();
    }

    void bind(@Sql(in = {"INTEGER"}) PreparedStatement ps, int id) throws SQLException {
        ps.setInt(1, id);
    }
}
