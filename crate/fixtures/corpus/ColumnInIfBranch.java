import java.sql.*;

class ColumnInIfBranch {
    void run(Connection c, boolean verbose) throws SQLException {
        PreparedStatement ps = c.prepareStatement("SELECT id, email FROM customer");
        ResultSet rs = ps.executeQuery();
        while (rs.next()) {
            long id = rs.getLong(1);
            if (verbose) {
                String m = rs.getString("mail");
            }
        }
    }
}
