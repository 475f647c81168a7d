import java.sql.*;

class UpdateSeveralColumns {
    void run(Connection c, String email, double score, long id) throws SQLException {
        PreparedStatement ps = c.prepareStatement("UPDATE customer SET email = ?, score = ? WHERE id = ?");
        ps.setString(1, email);
        ps.setDouble(2, score);
        ps.setLong(3, id);
        ps.executeUpdate();
    }
}
