import java.sql.*;
import java.sql.Date;

class AnnotatedStatements {
    void lookups(Connection conn, Date dob) throws SQLException {
        PreparedStatement ps = conn.prepareStatement(
            "SELECT id, salary FROM employee where dob = ?");
        ps.setDate(1, dob);

        Statement stmt = conn.createStatement();
        ResultSet rs = stmt.executeQuery(
            "SELECT username, dob FROM employee");
        while (rs.next()) {
            String user = rs.getString("username");
            Date born = rs.getDate(2);
        }
    }
}
