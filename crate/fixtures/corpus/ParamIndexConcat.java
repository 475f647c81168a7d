import java.sql.*;

class ParamIndexConcat {
    void run(Connection c, int id, String name) throws SQLException {
        String q = "SELECT price FROM product" + " WHERE id = ?";
        PreparedStatement ps = c.prepareStatement(q);
        ps.setInt(1, id);
        ps.setString(2, name);
    }
}
